// scan engines; implemented with the CLI surface
