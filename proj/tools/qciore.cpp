#include <qciore/cli.hpp>

#include <iostream>

int main( int argc, char** argv )
{
  return qciore::run_cli( { argv + 1, argv + argc }, std::cout, std::cerr );
}
