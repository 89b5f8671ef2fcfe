# -*- coding: utf-8 -*-
#
# nugap documentation build configuration file.

import sys, os

# The top-level nugap directory, so autodoc can import src.* and settings.
root_path = os.path.dirname(
    os.path.dirname(
        os.path.realpath(os.path.dirname(__file__))
    )
)
sys.path.insert(0, root_path)

import settings

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.intersphinx', 'sphinx.ext.mathjax']
intersphinx_mapping = {
    'python': ('http://docs.python.org/', None),
    'numpy': ('http://docs.scipy.org/doc/numpy/', None),
}
autoclass_content = "both"

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'nugap'
copyright = u'2026, The nugap developers'
version = '.'.join(settings.VERSION.split('.')[:2])
release = settings.VERSION

exclude_patterns = []
pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'nature'
html_static_path = ['_static']
htmlhelp_basename = 'nugap'

# -- Options for LaTeX and man page output -------------------------------------

latex_documents = [
  ('index', 'nugap.tex', u'nugap Documentation',
   u'The nugap developers', 'manual'),
]

man_pages = [
    ('index', 'nugap', u'nugap Documentation',
     [u'The nugap developers'], 1)
]
