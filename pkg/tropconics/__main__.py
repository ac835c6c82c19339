from tropconics.main import main

main()
