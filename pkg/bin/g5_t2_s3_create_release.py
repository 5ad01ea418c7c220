#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pywf import pywf

pywf.publish_to_github_release(real_run=True, verbose=True)
