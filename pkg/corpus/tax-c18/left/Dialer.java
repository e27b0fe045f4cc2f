package net2;

public class Dialer {
    public Client open() {
        return new Client("x");
    }
}
