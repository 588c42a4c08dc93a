# Commands module
