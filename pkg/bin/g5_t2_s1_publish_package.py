#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
We primarily use twine to publish the package for open source project.
"""

from pywf import pywf

pywf.twine_upload()
