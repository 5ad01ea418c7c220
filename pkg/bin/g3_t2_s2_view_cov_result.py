#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pywf import pywf

pywf.view_cov(real_run=True, verbose=True)
