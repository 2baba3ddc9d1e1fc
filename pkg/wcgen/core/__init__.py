"""Graph primitives shared by every other package."""

