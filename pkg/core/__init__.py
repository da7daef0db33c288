# Core plotting pipeline
