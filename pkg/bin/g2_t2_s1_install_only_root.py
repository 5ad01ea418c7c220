#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pywf import pywf

pywf.poetry_install_only_root(real_run=True, verbose=True)
