// src/wavedeconv.cc placeholder
