// src/synth.cc placeholder
