#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pywf import pywf

pywf.setup_codecov_io_upload_token_on_github(real_run=True, verbose=True)
