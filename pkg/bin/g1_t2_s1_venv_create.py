#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pywf import pywf

pywf.create_virtualenv(real_run=True, verbose=True)
