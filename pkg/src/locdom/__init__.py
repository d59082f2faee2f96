"""Locating-dominating sets in graphs and their orientations."""
