# Integration test package initialization
