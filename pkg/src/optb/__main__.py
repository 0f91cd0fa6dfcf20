from optb.cli import main

main()
