"""
Command line plumbing: parsing, command tables and dispatch.
"""
