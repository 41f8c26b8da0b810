#!/usr/bin/env python

from setuptools import setup

version = {}
with open("zetaforge/_version.py") as f:
    exec(f.read(), version)

setup(
    name="zetaforge",
    version=version["__version__"],
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Programming Language :: Python :: 3.13",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    description="Exact Hilbert zeta functions, semimodule counts and BPS numbers of plane curve singularities",
    license="BSD",
    keywords="numerical semigroup, Hilbert scheme, zeta function, HOMFLY, BPS",
    packages=["zetaforge", "zetaforge.tests"],
    python_requires=">= 3.10",
    install_requires=open("requirements.txt").read().strip().split("\n"),
    entry_points={"console_scripts": ["zetaforge = zetaforge.cli:main"]},
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    zip_safe=False,
)
