#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pywf import pywf

pywf.build_doc(real_run=True, verbose=True)
