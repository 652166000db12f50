// src/frontend.cc placeholder
