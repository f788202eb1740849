"""HTTP service wrapping the approximant toolkit."""

from .app import create_app

__all__ = ["create_app"]
