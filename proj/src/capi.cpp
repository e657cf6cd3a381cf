// extern-C surface; implemented after the core modules
