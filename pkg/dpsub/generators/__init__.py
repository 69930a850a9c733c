from . import bits, gint, hard, manhattan, random, setcover, zero
