#include <iostream>
int main(){std::cerr<<"todo\n";return 2;}
