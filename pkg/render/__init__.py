# Rendering package
