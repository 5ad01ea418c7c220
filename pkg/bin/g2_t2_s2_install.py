#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pywf import pywf

pywf.poetry_install(real_run=True, verbose=True)
