# Configuration file for the Sphinx documentation app.
# See the documentation for a full list of configuration options:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

from datetime import datetime
import sys

from singshadow import release as ss_release


sys.path.append("../")

# -- Project information -----------------------------------------------------

project = "singshadow"
copyright = f"2021-{datetime.now().year}, {ss_release.author}"
author = ss_release.author
version = ss_release.version
release = ss_release.version

master_doc = "index"

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx_autodoc_typehints",
    "sphinx_copybutton",
]

# Create links to references within singshadow's documentation to these
# packages
intersphinx_mapping = {
    "dask": ("https://docs.dask.org/en/latest", None),
    "numpy": ("https://numpy.org/doc/stable", None),
    "python": ("https://docs.python.org/3", None),
}


exclude_patterns = ["build"]

# -- Options for HTML output -------------------------------------------------

html_theme = "furo"

pygments_style = "friendly"
