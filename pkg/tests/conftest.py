"""Makes the tests directory importable for shared oracle helpers."""
