namespace cellkit {}
