#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pywf import pywf

pywf.edit_github_repo_metadata(real_run=True, verbose=True)
