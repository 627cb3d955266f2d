#include <cstdio>
int main(){ std::puts("braidorbit: not yet wired"); return 0; }
