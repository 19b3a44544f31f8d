"""Services layer: circuit model, spectrum, noise and fitting."""
