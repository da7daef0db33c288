# Map projections package
