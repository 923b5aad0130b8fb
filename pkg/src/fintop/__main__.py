from fintop.cli import main

main()
