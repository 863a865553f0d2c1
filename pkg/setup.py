from setuptools import setup, find_packages

import sys
sys.path.append("./latticecross")
from __version__ import __version__

with open("README.md", "r", encoding="utf-8") as fh:
   long_description = fh.read()

setup(
   name="latticecross",
   version=__version__,
   description="Exact enumeration of lattice paths by descents, major index and crossings.",
   license="MIT",
   packages=find_packages(exclude=["tests", "examples", "examples.*"]),
   classifiers=[ # https://pypi.org/classifiers/
      "Development Status :: 3 - Alpha",
      "Programming Language :: Python :: 3.8",
      "Programming Language :: Python :: 3.9",
      "Programming Language :: Python :: 3.10",
      "Programming Language :: Python :: 3.11",
      "License :: OSI Approved :: MIT License",
      "Operating System :: OS Independent",
      "Intended Audience :: Science/Research",
      "Natural Language :: English",
      "Topic :: Scientific/Engineering :: Mathematics",
      "Topic :: Software Development :: Libraries :: Python Modules",
   ],
   long_description=long_description,
   long_description_content_type="text/markdown",
   install_requires=[
      "sympy>=1.9", # exact polynomial arithmetic
      "colour>=0.1", # crossing markers
      "pytz>=2021", # report timestamps
   ],
   extras_require = {
      "dev": [
         "Sphinx==5.0.1", # documentation!
         "sphinx-autodoc-typehints", # better sphinx parsing
         "sphinx-book-theme", # Book theme
         "mypy", # type checking
         "types-pytz==2021.1.0", # type checking with pytz
         "pytest", # testing module
         "hypothesis", # property tests for the bijections
         "check-manifest", # creating MANIFEST.in
         "twine", # for uploading to PyPI
         "wheel>=0.36.2", # for building wheels
      ]
   },
   entry_points={
      "console_scripts": [
         "latticecross=latticecross.cli:main",
      ],
   },
   python_requires=">=3.8.0",
)
