# Sphinx configuration for the complete-graph-tsg docs.

import os
import sys

# autodoc imports the `src` package from the repository root
sys.path.insert(0, os.path.abspath('..'))

extensions = ['sphinx.ext.autodoc']
autodoc_member_order = 'bysource'

master_doc = 'index'
exclude_patterns = ['_build']

project = u'complete-graph-tsg'
version = '1.0'
release = '1.0.0'

pygments_style = 'sphinx'
html_theme = 'default'
htmlhelp_basename = 'completegraphtsgdoc'
