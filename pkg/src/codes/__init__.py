"""Generalized Reed-Muller codes over small finite fields."""
