# Unit test package initialization
