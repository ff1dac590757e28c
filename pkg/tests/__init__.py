"""anyon-compiler test suite."""
