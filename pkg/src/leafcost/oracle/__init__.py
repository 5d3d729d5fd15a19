"""Brute-force reference implementations and a small exhaustive graph generator."""
