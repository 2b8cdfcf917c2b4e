"""HTTP service around the rating engine: pydantic schemas, handlers, app."""
