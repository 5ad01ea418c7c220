# -*- coding: utf-8 -*-

"""
Strong involutions, sigma completions and the Pappus construction.
"""
