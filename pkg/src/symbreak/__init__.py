"""Symmetry toolkit for hypercubes, hypercube powers and augmented cubes."""
