package net2;

public class Client {
    public Client(String host, int port) {
    }
}
