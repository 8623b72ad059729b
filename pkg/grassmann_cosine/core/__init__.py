"""Core building blocks shared by every subsystem"""
