"""Exact localization calculus on the stellahedral variety of a matroid."""
