// src/wavelet.cc placeholder
