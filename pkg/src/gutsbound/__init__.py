"""Volume lower bounds for hyperbolic 3-orbifolds from splittings along four-point spheres."""
__version__ = "0.1.0"
