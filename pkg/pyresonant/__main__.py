from pyresonant.cli import main

main()
