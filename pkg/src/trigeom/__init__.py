"""Triangle geometry kernel, triangle centers and a numeric theorem checker."""
from trigeom.kernel import Circle, Line, Point, Tolerance, Triangle

__version__ = "0.1.0"

__all__ = ["Circle", "Line", "Point", "Tolerance", "Triangle", "__version__"]
