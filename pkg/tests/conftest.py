# Makes this directory importable so test modules can share fixtures.
