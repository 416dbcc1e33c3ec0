// Placeholder; the real CLI is added once the library is complete.
int main() { return 0; }
