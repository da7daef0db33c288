# Data loaders and bundled demo assets
