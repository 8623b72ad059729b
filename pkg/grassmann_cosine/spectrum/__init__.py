"""K-spectrum of the cosine-lambda transform"""
from .weights import enumerate_weights
from .eigenvalues import eta, eta_ratio_ac, ac_gamma_eta, f1_image_member
