"""
Reproducible acceptance suites: scenario files in, JSON and CSV reports out.
"""
