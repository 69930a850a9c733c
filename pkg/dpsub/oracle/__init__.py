from . import hansel, search, setcover, weighted
