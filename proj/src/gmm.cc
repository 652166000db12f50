// src/gmm.cc placeholder
