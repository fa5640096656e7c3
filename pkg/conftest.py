collect_ignore = ["src/nilmult/__main__.py"]
