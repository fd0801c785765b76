"""Sphinx configuration for the chromalab docs (MyST Markdown, furo theme)."""

from __future__ import annotations

from contextlib import suppress
from importlib import metadata

project = "chromalab"
author = "chromalab contributors"
copyright = "2026, chromalab contributors"

release = "0.0.0"
with suppress(metadata.PackageNotFoundError):
    # drop the setuptools-scm local part ("+g<hash>")
    release = metadata.version("chromalab").partition("+")[0]
version = release

extensions = [
    "myst_parser",
    "sphinx.ext.autodoc",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinx_design",
]
exclude_patterns = ["_build", ".DS_Store"]
source_suffix = {".md": "markdown"}

napoleon_google_docstring = True
napoleon_numpy_docstring = False
autodoc_typehints = "description"

myst_enable_extensions = ["amsmath", "colon_fence", "deflist", "dollarmath"]
myst_heading_anchors = 3
myst_dmath_double_inline = True

html_theme = "furo"
html_title = "chromalab"

latex_engine = "xelatex"
latex_documents = [("index", "chromalab.tex", "chromalab", author, "manual")]
latex_elements = {"papersize": "a4paper", "preamble": r"\usepackage{xurl}"}
