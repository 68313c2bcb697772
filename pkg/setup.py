#! /usr/bin/env python3

from setuptools import setup

# Futz with the path so we can import metadata.
import os, sys
here = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.join(here, 'src'))
from cfdim import __version__, __author__, __author_email__


setup(
    name = "cfdim",
    package_dir={'': 'src'},
    packages = ['cfdim'],
    version = __version__,
    author = __author__,
    author_email = __author_email__,
    keywords = sorted([
        'bisection', 'continued-fractions', 'fractals', 'gaussian-integers',
        'hausdorff-dimension', 'math', 'maths', 'pressure',
        ]),
    description = "Bounds on the Hausdorff dimension of continued "
                  "fraction sets.",
    long_description = """\
The cfdim package computes rigorous upper and lower bounds on the
Hausdorff dimension of sets of continued fractions whose digits are
restricted to an alphabet, real (such as {1, 2} or the even numbers) or
complex (Gaussian integers with positive real part).

For every word length k two numbers T_k^- <= dim <= T_k^+ are found as the
zeros of truncated pressure functions, summed over all words of length k.
Both converge to the dimension at the rate O(1/k).

``cfdim`` includes the following features:

    - Exact Gaussian-integer convergents, so that no word length overflows.
    - Stored or streamed enumeration of the word tree, optionally in
      parallel worker processes, with reproducible results.
    - Certified bisection brackets for each bound.
    - Sweeps over k with monotonicity and convergence-rate checks.
    - Verification suites for the identities the bounds rest on.
    - SVG pictures of the nested disk images.
    - A command line, ``cfdim``, with text, JSON and CSV output.

""",
    license = 'MIT',  # apologies for the American spelling
    python_requires = '>=3.8',
    install_requires = [
        'numpy',
        'mpmath',
        ],
    entry_points = {
        'console_scripts': ['cfdim = cfdim.cli:main'],
        },
    classifiers = [
        "Development Status :: 3 - Alpha",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        ],
    )
