// src/io.cc placeholder
