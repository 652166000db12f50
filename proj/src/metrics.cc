// src/metrics.cc placeholder
