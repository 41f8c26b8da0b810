# zetaforge documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath("../.."))

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.viewcode",
    "sphinx.ext.autosummary",
    "sphinx.ext.napoleon",
    "sphinx.ext.mathjax",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "zetaforge"
copyright = "2026, zetaforge contributors"
author = "zetaforge contributors"

import zetaforge

version = zetaforge.__version__
release = version

exclude_patterns = []
pygments_style = "sphinx"

html_theme = "sphinx_rtd_theme"
htmlhelp_basename = "zetaforgedoc"

latex_documents = [
    (master_doc, "zetaforge.tex", "zetaforge Documentation", author, "manual"),
]

man_pages = [(master_doc, "zetaforge", "zetaforge Documentation", [author], 1)]
