#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pywf import pywf

pywf.poetry_export(with_hash=False, real_run=True, verbose=True)
