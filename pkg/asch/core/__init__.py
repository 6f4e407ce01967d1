# Core Configuration, Errors and File Formats
