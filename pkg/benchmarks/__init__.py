"""Performance benchmarks package."""
