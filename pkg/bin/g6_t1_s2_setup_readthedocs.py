#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pywf import pywf

pywf.setup_readthedocs_project(real_run=True, verbose=True)
