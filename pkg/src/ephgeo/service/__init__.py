"""HTTP service: pydantic schemas, handler functions, FastAPI app factory."""

from .app import app, create_app

__all__ = ["app", "create_app"]
