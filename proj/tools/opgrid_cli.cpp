#include <iostream>

int main() {
    std::cout << "opgrid cli placeholder\n";
    return 0;
}
