# Plot models, value types and errors
