"""Identity builders and the catalogue that binds them to sample points."""
